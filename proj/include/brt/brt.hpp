#pragma once

// Umbrella header: pair colorings with bounded 1-homogeneous sets, their
// partition algorithms, and the brute-force oracles that certify them.

#include "brt/adversary.hpp"
#include "brt/coloring.hpp"
#include "brt/errors.hpp"
#include "brt/extractor.hpp"
#include "brt/felsner.hpp"
#include "brt/gen.hpp"
#include "brt/io.hpp"
#include "brt/mirsky.hpp"
#include "brt/oracle.hpp"
#include "brt/partition.hpp"
#include "brt/pipelines.hpp"
#include "brt/poset.hpp"
#include "brt/streams.hpp"
