#pragma once

// moduli-kit: genus-0 and genus-1 moduli computations, exact modular-form
// q-expansions, AGM periods, the homological Dehn-twist calculus, and
// level-structure arithmetic.

#include "complex_field.hpp"
#include "elliptic.hpp"
#include "errors.hpp"
#include "genus0.hpp"
#include "levels.hpp"
#include "mcg.hpp"
#include "periods.hpp"
#include "projective.hpp"
#include "qseries.hpp"
#include "serialize.hpp"
