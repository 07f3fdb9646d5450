#pragma once

#include "ekr/bounds.hpp"
#include "ekr/family.hpp"
#include "ekr/graph.hpp"
#include "ekr/interval.hpp"
#include "ekr/measure.hpp"
#include "ekr/rational.hpp"
#include "ekr/report.hpp"
#include "ekr/search.hpp"
#include "ekr/seq.hpp"
#include "ekr/setfam.hpp"
#include "ekr/walks.hpp"
