"""Identity systems package"""
