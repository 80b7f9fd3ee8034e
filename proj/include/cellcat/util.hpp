#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellcat {

// Search budgets count candidate assignments explored, never wall-clock,
// so identical inputs give identical outcomes on every machine.
struct Budget {
    std::uint64_t limit = 1'000'000;
    std::uint64_t used = 0;

    // Returns false once the budget is exhausted.
    bool spend(std::uint64_t n = 1) {
        if (used + n > limit) {
            used = limit;
            return false;
        }
        used += n;
        return true;
    }
    bool exhausted() const { return used >= limit; }
};

enum class SearchStatus { Found, NotFound, Exhausted };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NotFound: return "not-found";
        case SearchStatus::Exhausted: return "budget-exhausted";
    }
    return "?";
}

// Search outcome carrying zero or more results plus the exhaustion flag.
// An empty result list is only a definitive "no" when status != Exhausted.
template <class T>
struct Search {
    SearchStatus status = SearchStatus::NotFound;
    std::vector<T> results;

    bool found() const { return status == SearchStatus::Found; }
    bool definitive_no() const { return status == SearchStatus::NotFound; }
    const T& first() const {
        if (results.empty()) throw std::logic_error("Search: no result");
        return results.front();
    }
};

// SplitMix64: tiny deterministic generator for randomized test corpora.
// std::uniform_int_distribution is implementation-defined, so corpora
// built here stay byte-identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

struct cat_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a backend fails an internal consistency check that correct
// backends cannot fail (non-unique factorization, ill-defined quotient).
struct backend_inconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw cat_error(msg);
}

}  // namespace cellcat
