#pragma once

#include "slalom/coxeter.hpp"
#include "slalom/decomposition.hpp"
#include "slalom/divide.hpp"
#include "slalom/enumerate.hpp"
#include "slalom/errors.hpp"
#include "slalom/geometry.hpp"
#include "slalom/integer.hpp"
#include "slalom/knot.hpp"
#include "slalom/render.hpp"
#include "slalom/report.hpp"
#include "slalom/shape.hpp"
#include "slalom/spectral.hpp"
#include "slalom/tree.hpp"
