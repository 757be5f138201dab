#pragma once

#include "core.hpp"
#include "heap.hpp"
#include "truss.hpp"
#include "operators.hpp"
#include "structures.hpp"
#include "classify.hpp"
#include "zfamilies.hpp"
#include "fixtures.hpp"
#include "io.hpp"
