#pragma once

#include "golomb/arith.hpp"
#include "golomb/errors.hpp"
#include "golomb/homeo.hpp"
#include "golomb/io.hpp"
#include "golomb/maps.hpp"
#include "golomb/progression.hpp"
#include "golomb/special_sets.hpp"
#include "golomb/topology.hpp"
