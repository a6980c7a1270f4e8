#pragma once

#include "cotlat/closed_form.hpp"
#include "cotlat/direct_sum.hpp"
#include "cotlat/dyadic.hpp"
#include "cotlat/theta.hpp"
#include "cotlat/types.hpp"
#include "cotlat/verify.hpp"
#include "cotlat/zeta_product.hpp"
