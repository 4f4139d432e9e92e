#pragma once

#include "equipop/analytic.hpp"
#include "equipop/bivariate.hpp"
#include "equipop/census.hpp"
#include "equipop/errors.hpp"
#include "equipop/exchange.hpp"
#include "equipop/laurent.hpp"
#include "equipop/partition.hpp"
#include "equipop/permutation.hpp"
#include "equipop/rational.hpp"
#include "equipop/series.hpp"
#include "equipop/symmetry.hpp"
#include "equipop/tree.hpp"
#include "equipop/verify.hpp"
