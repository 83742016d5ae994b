#ifndef MIXEDTORI_MIXEDTORI_HPP
#define MIXEDTORI_MIXEDTORI_HPP

#include "mixedtori/config.hpp"
#include "mixedtori/error.hpp"
#include "mixedtori/lattice.hpp"
#include "mixedtori/mixed_polynomial.hpp"
#include "mixedtori/parser.hpp"
#include "mixedtori/newton.hpp"
#include "mixedtori/roots.hpp"
#include "mixedtori/multiplicity.hpp"
#include "mixedtori/winding.hpp"
#include "mixedtori/torus_check.hpp"
#include "mixedtori/criteria.hpp"
#include "mixedtori/analysis.hpp"
#include "mixedtori/report.hpp"

#endif  // MIXEDTORI_MIXEDTORI_HPP
