#ifndef RADIOLAB_RADIOLAB_HPP
#define RADIOLAB_RADIOLAB_HPP

#include "radiolab/distance.hpp"
#include "radiolab/families.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/io.hpp"
#include "radiolab/labeling.hpp"
#include "radiolab/layers.hpp"
#include "radiolab/reductions.hpp"
#include "radiolab/solver.hpp"

#endif  // RADIOLAB_RADIOLAB_HPP
