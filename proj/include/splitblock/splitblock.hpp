#pragma once

#include "splitblock/error.hpp"
#include "splitblock/partition.hpp"
#include "splitblock/poset.hpp"
#include "splitblock/dis_lattice.hpp"
#include "splitblock/block.hpp"
#include "splitblock/sblock_poset.hpp"
#include "splitblock/graph.hpp"
#include "splitblock/graph_oracle.hpp"
#include "splitblock/verify.hpp"
#include "splitblock/io.hpp"
