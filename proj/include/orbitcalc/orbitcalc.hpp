#pragma once

#include "orbitcalc/error.hpp"
#include "orbitcalc/partition.hpp"
#include "orbitcalc/duality.hpp"
#include "orbitcalc/waldspurger.hpp"
#include "orbitcalc/symbols.hpp"
#include "orbitcalc/aparam.hpp"
#include "orbitcalc/oracles.hpp"
#include "orbitcalc/harness.hpp"
