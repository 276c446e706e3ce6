#pragma once

#include "face.hpp"
#include "complex.hpp"
#include "canonical.hpp"
#include "cache.hpp"
#include "io.hpp"
#include "smith.hpp"
#include "homology.hpp"
#include "shelling.hpp"
#include "exact_cover.hpp"
#include "partition.hpp"
#include "cohen_macaulay.hpp"
#include "property.hpp"
#include "obstruction.hpp"
#include "graph.hpp"
#include "enumeration.hpp"
#include "catalog.hpp"
