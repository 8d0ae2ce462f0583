import test_advopt

test_advopt.execute_tests()
