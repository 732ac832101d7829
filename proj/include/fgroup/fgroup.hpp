#pragma once

#include "fgroup/core.hpp"
#include "fgroup/dm.hpp"
#include "fgroup/enumerate.hpp"
#include "fgroup/fenchel_nielsen.hpp"
#include "fgroup/gcd_identities.hpp"
#include "fgroup/induced.hpp"
#include "fgroup/step_invariants.hpp"
#include "fgroup/table.hpp"
#include "fgroup/tower.hpp"
