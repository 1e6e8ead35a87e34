"""
Unit tests for key=value configuration files
"""
import os
import tempfile
import unittest

from src.domain.exceptions import ConfigurationError
from src.infrastructure.config.config_file import parse_options, read_options


class TestConfigFile(unittest.TestCase):
    """Test cases for the config file reader"""

    def test_parse(self):
        """Comments and blanks are skipped, keys normalized"""
        options = parse_options("# benchmark\n\nScenarios = 1,3\nbase-seed=4\n")
        self.assertEqual(options, {"scenarios": "1,3", "base_seed": "4"})

    def test_missing_separator(self):
        """Lines without '=' are errors naming the line"""
        with self.assertRaises(ConfigurationError) as context:
            parse_options("sizes=512\nfull\n")
        self.assertIn("line 2", str(context.exception))

    def test_read_missing_file(self):
        """Unreadable files are configuration errors"""
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(ConfigurationError):
                read_options(os.path.join(directory, "absent.cfg"))


if __name__ == '__main__':
    unittest.main()
