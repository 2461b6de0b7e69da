#pragma once

#include "illum/classify.hpp"
#include "illum/fan.hpp"
#include "illum/feasibility.hpp"
#include "illum/generators.hpp"
#include "illum/illuminate.hpp"
#include "illum/io.hpp"
#include "illum/linalg.hpp"
#include "illum/oracle.hpp"
#include "illum/polytope.hpp"
#include "illum/position.hpp"
#include "illum/rational.hpp"
#include "illum/skeleton.hpp"
