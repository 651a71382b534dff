#pragma once

#include "frechetgap/compute.hpp"
#include "frechetgap/curve.hpp"
#include "frechetgap/decisions.hpp"
#include "frechetgap/error.hpp"
#include "frechetgap/generate.hpp"
#include "frechetgap/io.hpp"
#include "frechetgap/ladder.hpp"
#include "frechetgap/range.hpp"
#include "frechetgap/range_matrix.hpp"
#include "frechetgap/salg.hpp"
#include "frechetgap/shortcut_graph.hpp"
#include "frechetgap/sweep.hpp"
#include "frechetgap/weak_maze.hpp"
