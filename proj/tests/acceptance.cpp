#include "hopfdiag/acceptance.hpp"

#include <iostream>

// Usage: acceptance [filter]
int main(int argc, char** argv) {
    hopfdiag::AcceptanceOptions opt;
    opt.fixtures_dir = HOPFDIAG_FIXTURES;
    if (argc > 1) opt.filter = argv[1];
    const auto results = hopfdiag::run_acceptance(opt, &std::cout);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
    return results.empty() || failed ? 1 : 0;
}
