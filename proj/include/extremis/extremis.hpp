#pragma once

#include "extremis/canon.hpp"
#include "extremis/classify.hpp"
#include "extremis/constructions.hpp"
#include "extremis/count.hpp"
#include "extremis/counting.hpp"
#include "extremis/generate.hpp"
#include "extremis/graph.hpp"
#include "extremis/graph6.hpp"
#include "extremis/report.hpp"
#include "extremis/transform.hpp"
#include "extremis/verify.hpp"
