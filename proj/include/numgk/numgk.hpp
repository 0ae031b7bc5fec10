#pragma once

// Everything except the command layer (numgk/cli.hpp), which also needs
// the vendored JSON header.

#include "numgk/actions.hpp"
#include "numgk/charpoly.hpp"
#include "numgk/entropy.hpp"
#include "numgk/errors.hpp"
#include "numgk/explorer.hpp"
#include "numgk/factor.hpp"
#include "numgk/forms.hpp"
#include "numgk/matrix.hpp"
#include "numgk/polynomial.hpp"
#include "numgk/resultant.hpp"
#include "numgk/roots.hpp"
#include "numgk/scalar.hpp"
#include "numgk/spectral.hpp"
#include "numgk/surfaces.hpp"
#include "numgk/tables.hpp"
