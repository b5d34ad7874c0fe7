#pragma once

// Everything except the JSON layer (quiverlab/io.hpp).

#include "quiverlab/rational.hpp"
#include "quiverlab/matrix.hpp"
#include "quiverlab/polynomial.hpp"
#include "quiverlab/charpoly.hpp"
#include "quiverlab/cyclotomic.hpp"
#include "quiverlab/quiver.hpp"
#include "quiverlab/catalog.hpp"
#include "quiverlab/sparse.hpp"
#include "quiverlab/algebra.hpp"
#include "quiverlab/trivext.hpp"
#include "quiverlab/radical.hpp"
#include "quiverlab/module.hpp"
#include "quiverlab/resolution.hpp"
#include "quiverlab/serre.hpp"
