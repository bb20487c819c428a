#pragma once

#include <gtest/gtest.h>

#include "fhyper/errors.hpp"

#define EXPECT_ERROR_KIND(statement, expected_kind)                              \
  do {                                                                           \
    try {                                                                        \
      statement;                                                                 \
      ADD_FAILURE() << "no exception from " #statement;                          \
    } catch (const ::fhyper::Error& e) {                                         \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                            \
    }                                                                            \
  } while (0)
