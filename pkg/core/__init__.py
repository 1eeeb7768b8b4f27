"""Core infrastructure for the application."""