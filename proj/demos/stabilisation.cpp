// Library walkthrough: build S^2 x S^4, localize a kappa class by hand, and
// print the full stabilisation table.
#include <iostream>

#include "tautring/tautring.hpp"

int main() {
    using namespace tautring;

    auto M = product(sphere(1), sphere(2));
    std::cout << "fixed points of " << M.name << ":\n";
    for (const auto& fp : M.fixed_points)
        std::cout << "  " << fp.label << "  e = " << euler_of_rep(fp.rep).to_string()
                  << "\n";

    auto c = parse_class("e*p1", M.n);
    auto q = kappa_pullback(M, c);
    std::cout << "\nkappa-pullback of " << c.to_string() << " = "
              << (q.ok() ? q.value.to_string() : to_string(q.status)) << "\n\n";

    std::cout << generator_map_to_text(connected_sum_hom(M, 12));
    return 0;
}
