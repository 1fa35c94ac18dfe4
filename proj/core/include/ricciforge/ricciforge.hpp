#pragma once

#include "ricciforge/complex.hpp"
#include "ricciforge/curvature_field.hpp"
#include "ricciforge/dual.hpp"
#include "ricciforge/error.hpp"
#include "ricciforge/flow.hpp"
#include "ricciforge/forman.hpp"
#include "ricciforge/generators.hpp"
#include "ricciforge/io.hpp"
#include "ricciforge/metric_curvature.hpp"
#include "ricciforge/parallel.hpp"
#include "ricciforge/report.hpp"
