#pragma once

#include "nashgate/adjacency.hpp"
#include "nashgate/catalog.hpp"
#include "nashgate/diagnostics.hpp"
#include "nashgate/embedded.hpp"
#include "nashgate/euler.hpp"
#include "nashgate/exact.hpp"
#include "nashgate/format.hpp"
#include "nashgate/graph.hpp"
#include "nashgate/lattice.hpp"
#include "nashgate/matrix.hpp"
#include "nashgate/milnor.hpp"
#include "nashgate/report.hpp"
#include "nashgate/version.hpp"
