"""Runs the tests of one module and records a verdict per test method.

usage: runtests.py TEST_FILE RESULTS_JSON
"""
import importlib.util
import json
import os
import sys
import unittest


class Recorder(unittest.TextTestResult):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.verdicts = {}

    def addSuccess(self, test):
        super().addSuccess(test)
        self.verdicts[test._testMethodName] = "passed"

    def addFailure(self, test, err):
        super().addFailure(test, err)
        self.verdicts[test._testMethodName] = "failed"

    def addError(self, test, err):
        super().addError(test, err)
        name = getattr(test, "_testMethodName", str(test))
        self.verdicts[name] = "failed"

    def addSkip(self, test, reason):
        super().addSkip(test, reason)
        self.verdicts[test._testMethodName] = "skipped"


def load(path):
    sys.path.insert(0, os.path.dirname(os.path.abspath(path)))
    name = os.path.splitext(os.path.basename(path))[0]
    spec = importlib.util.spec_from_file_location(name, path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return unittest.defaultTestLoader.loadTestsFromModule(mod)


def main(argv):
    test_file, out = argv[1], argv[2]
    suite = load(test_file)
    runner = unittest.TextTestRunner(resultclass=Recorder, verbosity=0)
    result = runner.run(suite)
    with open(out, "w") as fh:
        json.dump(result.verdicts, fh, sort_keys=True)
    return 0 if result.wasSuccessful() else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv))
