#pragma once

#include "trihelix/analysis.hpp"
#include "trihelix/counts.hpp"
#include "trihelix/dataset.hpp"
#include "trihelix/errors.hpp"
#include "trihelix/measures.hpp"
#include "trihelix/query.hpp"
#include "trihelix/reference.hpp"
#include "trihelix/svg.hpp"
#include "trihelix/units.hpp"
