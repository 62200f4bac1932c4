#pragma once

#include "largeness/corpus.hpp"
