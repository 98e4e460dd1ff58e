#pragma once

#include "csm/arith.hpp"
#include "csm/engine.hpp"
#include "csm/expansion.hpp"
#include "csm/gysin.hpp"
#include "csm/io.hpp"
#include "csm/localization.hpp"
#include "csm/partition.hpp"
#include "csm/symmetric.hpp"
#include "csm/zelevinsky.hpp"
