static String f_gold ( List < Character > str , int len ) {
    int i = 0 , j = len - 1 ;
    for ( ; i < j ; i ++ , j -- ) {
        if ( str . get ( i ) == str . get ( j ) && str . get ( i ) != '*' ) {
            continue ;
        }
        if ( str . get ( i ) == '*' ) {
            str . set ( i , str . get ( j ) ) ;
            continue ;
        }
        System . out . println ( "Not Possible" ) ;
        return "" ;
    }
    return String . valueOf ( str ) ;
}
