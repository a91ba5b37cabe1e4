#pragma once

// Umbrella header for the double-disk-bundle decision library: finite
// presentations and their normal forms, integer Smith normal form and
// first-homology obstructions, Todd-Coxeter coset enumeration, exact
// quaternionic space-form models, the torus/sphere gluing calculus, and the
// verdict rules tying them together.

#include "ddb/coset.hpp"
#include "ddb/gluing.hpp"
#include "ddb/int_matrix.hpp"
#include "ddb/ints.hpp"
#include "ddb/json_io.hpp"
#include "ddb/parser.hpp"
#include "ddb/perm.hpp"
#include "ddb/presentation.hpp"
#include "ddb/quadext.hpp"
#include "ddb/quaternion.hpp"
#include "ddb/smith.hpp"
#include "ddb/spaceform.hpp"
#include "ddb/verdicts.hpp"
#include "ddb/word.hpp"
