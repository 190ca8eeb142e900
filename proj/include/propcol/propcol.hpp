#pragma once

#include "propcol/assignment.hpp"
#include "propcol/bounded_search.hpp"
#include "propcol/coloring.hpp"
#include "propcol/error.hpp"
#include "propcol/family.hpp"
#include "propcol/gallery.hpp"
#include "propcol/graph.hpp"
#include "propcol/huing.hpp"
#include "propcol/io.hpp"
#include "propcol/matching.hpp"
#include "propcol/oracle.hpp"
#include "propcol/solvers.hpp"
