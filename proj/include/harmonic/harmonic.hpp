#pragma once

#include "harmonic/numerics.hpp"
#include "harmonic/circle.hpp"
#include "harmonic/line.hpp"
#include "harmonic/finite_group.hpp"
#include "harmonic/almost_periodic.hpp"
