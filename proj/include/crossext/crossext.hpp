#pragma once

// Everything in one include. The workspace and command layers pull in the
// JSON dependency; include the individual headers to avoid it.

#include "algebra.hpp"
#include "cochains.hpp"
#include "cohomology.hpp"
#include "commands.hpp"
#include "crossed.hpp"
#include "errors.hpp"
#include "extensions.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "scalar.hpp"
#include "workspace.hpp"
