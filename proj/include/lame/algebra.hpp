#pragma once

#include "lame/algebra/discriminant.hpp"
#include "lame/algebra/linear.hpp"
#include "lame/algebra/matrix.hpp"
#include "lame/algebra/mpoly.hpp"
#include "lame/algebra/normalize.hpp"
#include "lame/algebra/ratpoly.hpp"
#include "lame/algebra/symmetric.hpp"
#include "lame/algebra/text.hpp"
#include "lame/algebra/upoly.hpp"
