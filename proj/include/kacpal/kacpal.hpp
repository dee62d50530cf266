#pragma once

#include "algebra.hpp"
#include "caps.hpp"
#include "classifier.hpp"
#include "cyclotomic.hpp"
#include "hopf.hpp"
#include "linalg.hpp"
#include "partitions.hpp"
#include "relations.hpp"
#include "serialize.hpp"
#include "wreath.hpp"
