// The mapping-class-group relations, machine-checked in their symplectic
// image, and the H_1 ledger they imply.

#include <cstdio>

#include <moduli/moduli.hpp>

int main() {
    using namespace moduli;
    std::printf("braid (g=1):   %s\n",
                verify_braid(HomologyClass::basis_a(1, 1), HomologyClass::basis_b(1, 1)) ? "holds" : "FAILS");
    std::printf("chain, one boundary:  %s\n", verify_chain_one_boundary() ? "holds" : "FAILS");
    std::printf("chain, two boundary:  %s\n", verify_chain_two_boundary() ? "holds" : "FAILS");
    std::printf("lantern:       %s\n", verify_lantern() ? "holds" : "FAILS");
    for (int g : {1, 2, 3, 5}) {
        auto rep = h1_mapping_class_group(g);
        std::printf("H_1(MCG_%d): order %lld%s  [", g, rep.order, rep.trivial ? " (trivial)" : "");
        for (std::size_t i = 0; i < rep.derivation.size(); ++i)
            std::printf("%s%s: %s", i ? "; " : "", rep.derivation[i].relation.c_str(),
                        rep.derivation[i].equation.c_str());
        std::puts("]");
    }
    return 0;
}
