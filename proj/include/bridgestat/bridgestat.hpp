#pragma once

#include "bridgestat/alexpoly.hpp"
#include "bridgestat/arith.hpp"
#include "bridgestat/extended.hpp"
#include "bridgestat/iwasawa.hpp"
#include "bridgestat/linking.hpp"
#include "bridgestat/linkmat.hpp"
#include "bridgestat/polynomial.hpp"
#include "bridgestat/schubert.hpp"
#include "bridgestat/stats.hpp"
