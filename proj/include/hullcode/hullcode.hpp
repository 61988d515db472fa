#pragma once

#include "hullcode/bounds.hpp"
#include "hullcode/codes.hpp"
#include "hullcode/construct.hpp"
#include "hullcode/error.hpp"
#include "hullcode/gf.hpp"
#include "hullcode/linalg.hpp"
