#ifndef ADDLAB_ADDLAB_HPP
#define ADDLAB_ADDLAB_HPP

#include "arith.hpp"
#include "cycle_space.hpp"
#include "format.hpp"
#include "graph.hpp"
#include "labeling.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "snf.hpp"
#include "toric.hpp"

#endif  // ADDLAB_ADDLAB_HPP
