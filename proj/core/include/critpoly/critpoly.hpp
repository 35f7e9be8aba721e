#pragma once

#include "critpoly/errors.hpp"
#include "critpoly/fuzz.hpp"
#include "critpoly/geometry.hpp"
#include "critpoly/inequalities.hpp"
#include "critpoly/poly.hpp"
#include "critpoly/random.hpp"
#include "critpoly/rootfind.hpp"
#include "critpoly/search.hpp"
#include "critpoly/version.hpp"
