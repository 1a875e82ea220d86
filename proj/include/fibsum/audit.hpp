#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fibsum/identities.hpp"
#include "fibsum/scalar.hpp"

namespace fibsum {

enum class Verdict { Pass, Fail };

const char* verdict_name(Verdict v);

struct AuditEntry {
    IdentityFamily family;
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::string reading;
    ExactScalar lhs;
    ExactScalar rhs;
    Verdict verdict = Verdict::Pass;
    std::string note;
    // The two Fibonacci-power oracles disagreed: a software fault, not a
    // finding about the printed formula.
    bool engine_error = false;
};

struct AuditReport {
    std::vector<AuditEntry> entries;

    std::size_t pass_count() const;
    std::size_t fail_count() const;
    bool all_pass() const { return fail_count() == 0; }
    bool has_engine_error() const;
};

// Inclusive range of non-negative parameters.
struct IndexRange {
    std::int64_t first = 0;
    std::int64_t last = 0;
};

// Evaluates every applicable (family, n, p) cell. Theorem families compare
// the direct-summation oracle against closed_form_rhs under each reading and
// cross-check that oracle against the Binet oracle; REMARK1_*, PROP1_* and
// LEMMA5/LEMMA7 compare their own two sides. REMARK1_* cells
// are emitted once per p with n = 0, expansion cells once per n with p = 0.
//
// Entries are ordered by (family, p, n, reading index) whatever the
// schedule; `parallel` only spreads cells across threads.
AuditReport audit(std::span<const IdentityFamily> families, IndexRange n_range, IndexRange p_range,
                  bool parallel = false);

}  // namespace fibsum
