#pragma once

#include "cake/allocation.hpp"
#include "cake/demos.hpp"
#include "cake/division.hpp"
#include "cake/error.hpp"
#include "cake/fairness.hpp"
#include "cake/generator.hpp"
#include "cake/instances.hpp"
#include "cake/json_io.hpp"
#include "cake/partition_orders.hpp"
#include "cake/protocols/aristo_prop.hpp"
#include "cake/protocols/baselines.hpp"
#include "cake/protocols/common.hpp"
#include "cake/protocols/registry.hpp"
#include "cake/protocols/sym_prop.hpp"
#include "cake/protocols/symmetric_envy_free.hpp"
#include "cake/query.hpp"
#include "cake/rational.hpp"
#include "cake/subcake.hpp"
#include "cake/valuation.hpp"
