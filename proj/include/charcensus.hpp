#pragma once

#include "charcensus/abacus.hpp"
#include "charcensus/bigint.hpp"
#include "charcensus/census.hpp"
#include "charcensus/character.hpp"
#include "charcensus/cli.hpp"
#include "charcensus/partition.hpp"
#include "charcensus/report_io.hpp"
#include "charcensus/valuation.hpp"
