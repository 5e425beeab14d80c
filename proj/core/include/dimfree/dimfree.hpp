#pragma once

#include "dimfree/dimvar.hpp"
#include "dimfree/equivalence.hpp"
#include "dimfree/errors.hpp"
#include "dimfree/geometry.hpp"
#include "dimfree/hypergroup_maps.hpp"
#include "dimfree/lattice.hpp"
#include "dimfree/lie.hpp"
#include "dimfree/matrix_io.hpp"
#include "dimfree/perm.hpp"
#include "dimfree/poly.hpp"
#include "dimfree/stp.hpp"
#include "dimfree/types.hpp"
#include "dimfree/weights.hpp"
