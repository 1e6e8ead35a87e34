"""
Unit tests for the package logger
"""
import logging
import unittest

from src.infrastructure.utils.logging import detail_level, disable_debug, enable_debug, logger, quiet_fits, set_quiet


class TestLogging(unittest.TestCase):
    """Test cases for the logging switches"""

    def tearDown(self):
        disable_debug()

    def test_levels(self):
        """Debug, quiet and default levels reach every handler"""
        enable_debug()
        self.assertEqual(logger.level, logging.DEBUG)
        self.assertTrue(all(handler.level == logging.DEBUG for handler in logger.handlers))
        set_quiet()
        self.assertEqual(logger.level, logging.WARNING)
        disable_debug()
        self.assertEqual(logger.level, logging.INFO)

    def test_quiet_fits(self):
        """Repeated-fit summaries drop below INFO and the level is restored"""
        self.assertEqual(detail_level(logging.INFO), logging.WARNING)
        with quiet_fits():
            self.assertFalse(logger.isEnabledFor(logging.INFO))
        self.assertEqual(logger.level, logging.INFO)
        enable_debug()
        with quiet_fits():
            self.assertTrue(logger.isEnabledFor(logging.DEBUG))
        self.assertEqual(logger.level, logging.DEBUG)

    def test_single_console_handler_on_stderr(self):
        """Exactly one console handler is installed"""
        consoles = [handler for handler in logger.handlers if getattr(handler, "qdcart_console", False)]
        self.assertEqual(len(consoles), 1)
        self.assertIsInstance(consoles[0], logging.StreamHandler)


if __name__ == '__main__':
    unittest.main()
