// From the Legendre parameter to the j-invariant: periods by AGM, tau from
// the framed basis, j from the exact q-expansion.

#include <cstdio>

#include <moduli/moduli.hpp>

int main() {
    using namespace moduli;
    for (double lambda : {0.5, 0.3, 0.7, 0.1}) {
        LegendreParameter lp(lambda);
        PeriodResult pr = legendre_periods(lp);
        HalfPlanePoint tau = tau_from_lambda(lp);
        std::complex<double> j = j_from_lambda(lp);
        std::printf("lambda = %.3f  omega1 = %.12f  |omega2| = %.12f  tau = %.12f + %.12fi  j = %.6f\n",
                    lambda, pr.periods.w1.real(), std::abs(pr.periods.w2), tau.re(), tau.im(),
                    j.real());
    }
    std::puts("\nthe six relabelings of the four branch points share one j:");
    for (const auto& mu : cross_ratio_orbit(std::complex<double>(0.3, 0.0)))
        std::printf("  lambda' = %9.5f + %8.5fi   j = %.6f\n", mu.real(), mu.imag(),
                    j_from_lambda(LegendreParameter(mu)).real());
    return 0;
}
