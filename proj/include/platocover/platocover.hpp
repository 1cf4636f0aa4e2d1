#pragma once

#include "platocover/errors.hpp"
#include "platocover/gf.hpp"
#include "platocover/linalg.hpp"
#include "platocover/maps.hpp"
#include "platocover/chartab.hpp"
#include "platocover/homology.hpp"
#include "platocover/decompose.hpp"
#include "platocover/lattice.hpp"
#include "platocover/builder.hpp"
#include "platocover/oracle.hpp"
#include "platocover/checks.hpp"
#include "platocover/render.hpp"
