#include "hypertoda/acceptance.hpp"

#include <iostream>

int main()
{
    hypertoda::AcceptanceConfig cfg;
    bool ok = true;
    for (const auto &r : hypertoda::run_acceptance(cfg)) {
        std::cout << hypertoda::summary_line(r) << '\n';
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}
