#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// genus-0 / projective geometry
struct CoincidentPoints : error { using error::error; };
struct DegenerateMap : error { using error::error; };
struct BadModuliPoint : error { using error::error; };

// genus-1 / half-plane reduction
struct NotInUpperHalfPlane : error { using error::error; };
struct DegenerateBasis : error { using error::error; };
struct NotUnimodular : error { using error::error; };
struct NonConvergence : error { using error::error; };
struct ScalarMatrix : error { using error::error; };

// q-series evaluation
struct DivergentTail : error { using error::error; };
struct NotAUnit : error { using error::error; };

// periods
struct NonPositiveInput : error { using error::error; };

// homological Dehn-twist calculus
struct ZeroClass : error { using error::error; };
struct BadIntersection : error { using error::error; };
struct BadGenus : error { using error::error; };
struct NonIntegralGenus : error { using error::error; };
struct BadOrbitSize : error { using error::error; };

// level arithmetic
struct ModulusTooLarge : error { using error::error; };
struct BadModulus : error { using error::error; };
struct BoundTooLarge : error { using error::error; };

} // namespace moduli
