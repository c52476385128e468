#pragma once

#include "errors.hpp"
#include "fcalc.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "intersection.hpp"
#include "poly.hpp"
#include "poly_json.hpp"
