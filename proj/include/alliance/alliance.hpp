#pragma once

#include "bounds.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "report.hpp"
#include "solver.hpp"
#include "spectral.hpp"
#include "vertex_set.hpp"
