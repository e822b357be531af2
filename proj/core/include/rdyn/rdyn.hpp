#pragma once

#include "rdyn/bipoly.hpp"
#include "rdyn/classify.hpp"
#include "rdyn/curves.hpp"
#include "rdyn/decompose.hpp"
#include "rdyn/errors.hpp"
#include "rdyn/factor.hpp"
#include "rdyn/mpoly.hpp"
#include "rdyn/orbifold.hpp"
#include "rdyn/place.hpp"
#include "rdyn/poly.hpp"
#include "rdyn/ratmap.hpp"
#include "rdyn/search.hpp"
#include "rdyn/series.hpp"
