// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reluctant/bench.hpp"
#include "reluctant/growth.hpp"
#include "reluctant/instrumentation.hpp"
#include "reluctant/io.hpp"
#include "reluctant/oracle.hpp"
#include "reluctant/random.hpp"
#include "reluctant/sorts.hpp"
#include "reluctant/types.hpp"
#include "reluctant/verify.hpp"
