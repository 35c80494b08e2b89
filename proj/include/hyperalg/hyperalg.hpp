#pragma once

#include "hyperalg/algebra.hpp"
#include "hyperalg/element.hpp"
#include "hyperalg/error.hpp"
#include "hyperalg/isomorphism.hpp"
#include "hyperalg/polar.hpp"
#include "hyperalg/polynomial.hpp"
#include "hyperalg/roots.hpp"
#include "hyperalg/rotation.hpp"
