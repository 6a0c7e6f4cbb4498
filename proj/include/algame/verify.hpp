#ifndef ALGAME_VERIFY_HPP
#define ALGAME_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "algame/abelian.hpp"

namespace algame::verify {

struct Check {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<Check> checks;

    bool all_pass() const;
    void add(std::string id, bool pass, std::string detail = "");
    void merge(const SuiteResult& other);
};

/// All invariant-factor chains with product <= max_order (the trivial group
/// included), sorted.
std::vector<FinGenAbGroup> all_finite_abelian(std::int64_t max_order);

// The named verification suites backing both `verify <suite>` and the
// acceptance run. The 3-generator report writes its comparison table to
// `table_out` when given.
SuiteResult figure1();
SuiteResult two_gen_formula_vs_bruteforce(int max_exp = 20);
SuiteResult classifier_vs_bruteforce(std::int64_t max_order = 256);
SuiteResult winning_moves(std::int64_t max_order = 256, std::int64_t max_rank1_n = 50, int max_rank = 3);
SuiteResult option_characterization(std::int64_t max_order = 128);
SuiteResult omega_reduction(std::int64_t max_order = 200);
SuiteResult cyclic_and_formula_families(std::int64_t max_n = 10000);
SuiteResult compounds();
SuiteResult groups_small();
SuiteResult groups16();
SuiteResult subgroup_games();
SuiteResult rings_small();
SuiteResult ring_nimbers();
SuiteResult conjecture_3gen_report(std::ostream* table_out, int max_exp = 12);
SuiteResult property_suite();

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);
/// Runs one named suite ("all" aggregates every suite); the report table of
/// the conjecture suite goes to `out`.
SuiteResult run_suite(const std::string& name, std::ostream& out);

} // namespace algame::verify

#endif
