#pragma once
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace lnd {

// Error categories surfaced by the CLI as distinct exit codes.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};
struct IoError : std::runtime_error {
    explicit IoError(const std::string& m) : std::runtime_error(m) {}
};
struct BoundError : std::runtime_error {
    explicit BoundError(const std::string& m) : std::runtime_error(m) {}
};
struct MismatchError : std::runtime_error {
    explicit MismatchError(const std::string& m) : std::runtime_error(m) {}
};
// Signals a broken internal invariant (e.g. an obstruction that fails its
// cocycle assertion).  Never expected on valid inputs.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& m) : std::logic_error(m) {}
};

// Parallelism cap from LN_DEFORM_THREADS (defaults to 1).
int thread_limit();

// Runs f(i) for i in [0, n).  Splits across threads when thread_limit() > 1;
// f must be safe to call concurrently for distinct i.
void parallel_for(long n, const std::function<void(long)>& f);

// Deterministic seeded generator used for every randomized routine.  The
// draw is reduced by modulo so results do not depend on the standard
// library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        // xorshift* keeps the sequence identical across platforms.
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }
    // Uniform-ish draw in [lo, hi] (inclusive); spans are tiny in practice.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

}  // namespace lnd
