#pragma once

#include "ostat/bounds.hpp"
#include "ostat/dist.hpp"
#include "ostat/exact.hpp"
#include "ostat/explore.hpp"
#include "ostat/monte_carlo.hpp"
#include "ostat/order_stats.hpp"
#include "ostat/peak.hpp"
#include "ostat/proofcheck.hpp"
#include "ostat/rational.hpp"
#include "ostat/reference_tables.hpp"
#include "ostat/verification_report.hpp"
#include "ostat/verify.hpp"
