#pragma once

#include "maxsurf/catalog.hpp"
#include "maxsurf/contour.hpp"
#include "maxsurf/cx_expr.hpp"
#include "maxsurf/domain.hpp"
#include "maxsurf/errors.hpp"
#include "maxsurf/family.hpp"
#include "maxsurf/hodograph.hpp"
#include "maxsurf/report.hpp"
#include "maxsurf/surf_io.hpp"
#include "maxsurf/types.hpp"
#include "maxsurf/version.hpp"
#include "maxsurf/weierstrass.hpp"
