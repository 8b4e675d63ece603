"""
ED文字列ツールキット - テストパッケージ
"""
