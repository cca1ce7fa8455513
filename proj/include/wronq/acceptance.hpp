#ifndef WRONQ_ACCEPTANCE_HPP
#define WRONQ_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace wronq::acceptance {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    bool gating = true;  // conjecture evidence does not gate
    std::string detail;
    double seconds = 0.0;
};

// Runs the full battery; every tolerance is pinned in the implementation.
std::vector<CriterionResult> run_all(unsigned threads = 0);

// True when every gating criterion passed.
bool all_gating_passed(const std::vector<CriterionResult>& results);

// "criterion N: PASS — name (detail) [x.xs]"
std::string format_line(const CriterionResult& r);

} // namespace wronq::acceptance

#endif // WRONQ_ACCEPTANCE_HPP
