#pragma once

// Umbrella header for the whole library.

#include "modlat/abelian.hpp"
#include "modlat/bigint.hpp"
#include "modlat/bounds.hpp"
#include "modlat/classify.hpp"
#include "modlat/counting.hpp"
#include "modlat/enumerate.hpp"
#include "modlat/field.hpp"
#include "modlat/goursat.hpp"
#include "modlat/graph.hpp"
#include "modlat/harness.hpp"
#include "modlat/io.hpp"
#include "modlat/matching.hpp"
#include "modlat/matrix.hpp"
#include "modlat/module.hpp"
#include "modlat/pairing.hpp"
#include "modlat/planarity.hpp"
