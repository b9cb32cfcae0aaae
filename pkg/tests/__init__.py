"""測試模組"""
