#ifndef LIESPEC_LIESPEC_HPP
#define LIESPEC_LIESPEC_HPP

#include "duality.hpp"
#include "errors.hpp"
#include "exterior.hpp"
#include "koszul.hpp"
#include "lie_algebra.hpp"
#include "representation.hpp"
#include "scalar.hpp"
#include "spectra.hpp"

#endif
