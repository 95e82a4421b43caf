// collatzbits.hpp
// Umbrella header.

#pragma once

#include "accel.hpp"
#include "bitnum.hpp"
#include "lengthpred.hpp"
#include "render.hpp"
#include "sieve.hpp"
#include "stepper.hpp"
#include "verify.hpp"
