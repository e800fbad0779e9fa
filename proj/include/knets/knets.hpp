#pragma once

// Umbrella header.

#include "gf.hpp"
#include "plane.hpp"
#include "poly.hpp"
#include "linalg.hpp"
#include "curves.hpp"
#include "cubic_group.hpp"
#include "nets.hpp"
#include "latin.hpp"
#include "constructors.hpp"
