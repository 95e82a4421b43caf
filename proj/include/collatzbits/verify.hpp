// verify.hpp
// Range verification with resumable checkpoints.
//
// Every odd value in the range goes through the full per-value suite:
// automaton vs shift-add oracle, both length predictors vs the actual step,
// accelerated-step equivalence with its integer ratio identity, and the
// three per-step observations. Progress is flushed to a key=value
// checkpoint after each batch by writing a temporary file and renaming it
// over the old one.

#pragma once

#include "accel.hpp"
#include "bitnum.hpp"
#include "lengthpred.hpp"
#include "stepper.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace collatzbits {

struct VerifyViolation {
    OddNum value;
    std::string check;
};

/// Runs the per-value suite on d, appending one entry per failed check.
inline void verify_value(const OddNum& d, std::vector<VerifyViolation>& out)
{
    auto fail = [&](std::string check) { out.push_back({d, std::move(check)}); };

    const Algorithm1Result a1 = algorithm1_raw(d);
    const BitNum oracle = shift_add_triple(d);
    if (a1.value != oracle) {
        fail("oracle");
    }
    if (a1.trace.records.size() != d.bit_length() + 2 || a1.trace.written.size() != d.bit_length() + 2) {
        fail("trace-shape");
    }

    const SyracuseStep step = syracuse_step(d);
    if (step.next != strip_trailing_zeros(oracle).odd) {
        fail("syracuse");
    }
    const long actual = static_cast<long>(step.next.bit_length()) - static_cast<long>(d.bit_length());

    if (method1_delta(d).delta != actual) {
        fail("method1");
    }
    try {
        if (-hew_shortening(d) != actual) {
            fail("hew");
        }
    } catch (const ImpossibleHewCase&) {
        fail("hew-impossible-cell");
    }

    const AccelStep accel = accel_step(d);
    OddNum walked = d;
    for (std::size_t i = 0; i < accel.k; ++i) {
        walked = syracuse_step(walked).next;
    }
    if (accel.next != walked) {
        fail("accel");
    }
    if (!ratio_identity_holds(accel)) {
        fail("accel-ratio");
    }

    const TrajectoryRow from = detail::make_row(0, d, nullptr);
    const TrajectoryRow to = detail::make_row(1, step.next, &from);
    check_transition(from, to, [&](ObservationViolation v) {
        fail(std::string("observation-") + observation_name(v.which));
    });
}

// ---------------------------------------------------------------------------
// Checkpoints
// ---------------------------------------------------------------------------

/// 64-bit FNV-1a, hex encoded.
inline std::string fingerprint(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

struct Checkpoint {
    static constexpr int kVersion = 1;

    int version = kVersion;
    std::string fingerprint;
    BitNum next;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;

    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string serialize(const Checkpoint& c)
{
    std::ostringstream out;
    out << "version=" << c.version << '\n'
        << "fingerprint=" << c.fingerprint << '\n'
        << "next=" << to_decimal(c.next) << '\n'
        << "checked=" << c.checked << '\n'
        << "violations=" << c.violations << '\n';
    return out.str();
}

inline Checkpoint parse_checkpoint(std::string_view text)
{
    std::map<std::string, std::string> kv;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw CheckpointError("checkpoint: malformed line '" + line + "'");
        }
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    for (const char* key : {"version", "fingerprint", "next", "checked", "violations"}) {
        if (!kv.contains(key)) {
            throw CheckpointError(std::string("checkpoint: missing key '") + key + "'");
        }
    }
    Checkpoint c;
    try {
        c.version = std::stoi(kv["version"]);
        c.fingerprint = kv["fingerprint"];
        c.next = from_decimal(kv["next"]);
        c.checked = std::stoull(kv["checked"]);
        c.violations = std::stoull(kv["violations"]);
    } catch (const std::exception& e) {
        throw CheckpointError(std::string("checkpoint: bad value: ") + e.what());
    }
    if (c.version != Checkpoint::kVersion) {
        throw CheckpointError("checkpoint: unsupported version " + std::to_string(c.version));
    }
    return c;
}

inline std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_checkpoint(buf.str());
}

inline void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << serialize(c);
        out.flush();
        if (!out) {
            throw CheckpointError("checkpoint: cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// Range driver
// ---------------------------------------------------------------------------

struct VerifyOptions {
    OddNum lo;
    OddNum hi;
    std::size_t batch = 4096;
    unsigned workers = 1;
    std::optional<std::filesystem::path> checkpoint;
    std::optional<std::size_t> max_batches; // stop early, as if interrupted
};

struct VerifyOutcome {
    std::uint64_t checked = 0;
    std::uint64_t violation_count = 0;
    std::vector<VerifyViolation> violations; // this run only; resumed counts live in violation_count
    bool complete = false;
};

/// Fingerprint input: everything that changes the result. Worker count is
/// excluded since output does not depend on it.
inline std::string verify_fingerprint(const VerifyOptions& o)
{
    return fingerprint("verify lo=" + to_decimal(o.lo) + " hi=" + to_decimal(o.hi) +
                       " batch=" + std::to_string(o.batch));
}

/// Throws CheckpointError when an existing checkpoint was written for
/// different options.
inline VerifyOutcome run_verify(const VerifyOptions& opts)
{
    if (opts.hi < opts.lo) {
        throw std::invalid_argument("verify: lo > hi");
    }
    if (opts.batch == 0) {
        throw std::invalid_argument("verify: batch must be >= 1");
    }

    const std::string fp = verify_fingerprint(opts);
    VerifyOutcome outcome;
    BitNum next = opts.lo;

    if (opts.checkpoint) {
        if (auto existing = read_checkpoint(*opts.checkpoint)) {
            if (existing->fingerprint != fp) {
                throw CheckpointError("checkpoint fingerprint " + existing->fingerprint +
                                      " does not match this run (" + fp + ")");
            }
            next = existing->next;
            outcome.checked = existing->checked;
            outcome.violation_count = existing->violations;
        }
    }

    const BitNum two = BitNum::from_u64(2);
    const unsigned workers = std::max(1U, opts.workers);
    std::size_t batches = 0;

    while (next <= opts.hi.value()) {
        if (opts.max_batches && batches >= *opts.max_batches) {
            return outcome;
        }
        std::vector<OddNum> values;
        values.reserve(opts.batch);
        for (; values.size() < opts.batch && next <= opts.hi.value(); next = add(next, two)) {
            values.emplace_back(next);
        }

        std::vector<std::vector<VerifyViolation>> shards(workers);
        const std::size_t per = (values.size() + workers - 1) / workers;
        auto run = [&](unsigned s) {
            const std::size_t begin = std::min(values.size(), s * per);
            const std::size_t end = std::min(values.size(), begin + per);
            for (std::size_t i = begin; i < end; ++i) {
                verify_value(values[i], shards[s]);
            }
        };
        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned s = 0; s < workers; ++s) {
                pool.emplace_back(run, s);
            }
        }

        for (auto& shard : shards) {
            outcome.violation_count += shard.size();
            std::move(shard.begin(), shard.end(), std::back_inserter(outcome.violations));
        }
        outcome.checked += values.size();
        ++batches;

        if (opts.checkpoint) {
            write_checkpoint(*opts.checkpoint, {Checkpoint::kVersion, fp, next, outcome.checked,
                                                outcome.violation_count});
        }
    }
    outcome.complete = true;
    return outcome;
}

} // namespace collatzbits
