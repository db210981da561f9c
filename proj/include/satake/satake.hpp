// satake.hpp — umbrella header

#pragma once

#include "satake/bigint.hpp"
#include "satake/characters.hpp"
#include "satake/errors.hpp"
#include "satake/euler.hpp"
#include "satake/laurent.hpp"
#include "satake/rational.hpp"
#include "satake/root_system.hpp"
#include "satake/series.hpp"
#include "satake/whittaker.hpp"
#include "satake/zeta.hpp"
