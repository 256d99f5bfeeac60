#pragma once

#include "wellblock/analytic.hpp"
#include "wellblock/bessel.hpp"
#include "wellblock/errors.hpp"
#include "wellblock/fdsim.hpp"
#include "wellblock/harness.hpp"
#include "wellblock/mbal.hpp"
#include "wellblock/radius.hpp"
#include "wellblock/roots.hpp"
#include "wellblock/types.hpp"
