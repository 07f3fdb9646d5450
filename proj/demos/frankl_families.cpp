// Prints the Frankl families F_i^t(n) for a small n, their p-weights, and the
// stability example next to F_0.

#include "ekr/ekr.hpp"

#include <iostream>

using namespace ekr;

int main()
{
    const int n = 8, t = 2;
    for (Rational p : {rat(1, 4), rat(1, 3), rat(2, 5)}) {
        std::cout << "p = " << to_string(p) << "\n";
        const measure::WeightParams w(n, p);
        for (int i = 0; t + 2 * i <= n; ++i) {
            Family f = setfam::make_frankl(n, t, i);
            std::cout << "  F_" << i << ": " << f.size() << " sets, weight " << to_string(measure::mu(f, w)) << " ~ "
                      << to_double(measure::mu(f, w)) << "\n";
        }
    }

    Family g = setfam::stability_weight_family(n, t);
    Family f0 = setfam::make_frankl(n, t, 0);
    const measure::WeightParams w(n, rat(1, 4));
    std::cout << "\nstability example: " << g.size() << " sets, weight " << to_string(measure::mu(g, w))
              << " vs F_0 " << to_string(measure::mu(f0, w)) << "\n";
    std::cout << "  shifted " << setfam::is_shifted(g) << ", " << t << "-intersecting " << setfam::is_t_intersecting(g, t)
              << ", inside a star " << setfam::find_star_copy_containing(g, t).has_value() << "\n";

    std::cout << "\nuniform F_1^2(7,3):\n" << family_to_string(setfam::make_frankl_uniform(7, 3, 2, 1));
    return 0;
}
