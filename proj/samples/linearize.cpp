// Expands p_m p_n for a numeric system two ways and prints both tables.
#include <iostream>

#include "oplin/oplin.hpp"

int main(int argc, char** argv) {
    std::string system = argc > 1 ? argv[1] : "linear";
    unsigned m = argc > 2 ? std::stoul(argv[2]) : 2, n = argc > 3 ? std::stoul(argv[3]) : 3;
    try {
        auto spec = oplin::resolve_system(system);
        auto monic = spec.materialize_monic<oplin::Rational>(m + n + 1);
        auto table = oplin::expand_product(m, n, monic.system());
        std::cout << "p_" << m << " p_" << n << " for " << monic.system().label() << "\n";
        for (unsigned k = m > n ? m - n : n - m; k <= m + n; ++k) {
            auto paths = oplin::path_sum_t1(m, n, k, monic);
            std::cout << "  k=" << k << "  a=" << table.coefficient(k).to_string()
                      << "  L=" << table.l_value(k).to_string() << "  path sum L=" << paths.total.to_string()
                      << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
