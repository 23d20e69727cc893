#include "hilbsq/verify/acceptance.hpp"

#include <iostream>

int main() {
    using namespace hilbsq;
    bool all = true;
    std::vector<verify::CriterionOutcome> outcomes;
    for (int n = 1; n <= 8; ++n) {
        verify::CriterionOutcome o = verify::run_criterion(n);
        std::cout << verify::summary_line(o) << std::endl;
        all = all && o.passed();
        outcomes.push_back(std::move(o));
    }
    for (const auto& o : outcomes) {
        for (const auto& c : o.checks) {
            if (c.status == CheckStatus::Pass) continue;
            std::cerr << "  [" << o.number << "] " << status_name(c.status) << ": " << c.name;
            if (!c.detail.empty()) std::cerr << " -- " << c.detail;
            std::cerr << '\n';
        }
    }
    return all ? 0 : 1;
}
